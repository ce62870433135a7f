import sys

from spinalg.cli import main

sys.exit(main())
