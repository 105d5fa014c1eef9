import sys

from m13.cli import main

sys.exit(main())
