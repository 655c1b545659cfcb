import sys

from ewom.cli import main

sys.exit(main())
