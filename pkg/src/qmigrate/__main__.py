import sys

from qmigrate.cli import main

sys.exit(main())
