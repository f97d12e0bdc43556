import sys

from gadj.cli import main

sys.exit(main())
