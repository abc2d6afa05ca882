import sys

from wwk.cli import main

sys.exit(main())
