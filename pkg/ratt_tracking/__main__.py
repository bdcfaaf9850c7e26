import sys

from .tracking_tools import main

sys.exit(main())
