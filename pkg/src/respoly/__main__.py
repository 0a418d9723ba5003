import sys

from respoly.cli import main

sys.exit(main())
