import sys

from trickle.cli import main

sys.exit(main())
