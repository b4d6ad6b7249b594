import sys

from digraphseq.cli import main

sys.exit(main())
