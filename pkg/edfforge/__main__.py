import sys

from edfforge.cli import main

sys.exit(main())
