import sys

from plateaurc.cli import main

sys.exit(main())
