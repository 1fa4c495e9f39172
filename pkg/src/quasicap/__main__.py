import sys

from quasicap.cli import main

sys.exit(main())
