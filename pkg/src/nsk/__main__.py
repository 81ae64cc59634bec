import sys

from nsk.cli import main

sys.exit(main())
