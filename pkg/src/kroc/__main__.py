import sys

from kroc.cli import main

sys.exit(main())
