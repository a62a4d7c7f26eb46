import sys

from randlinks.cli import main

sys.exit(main())
