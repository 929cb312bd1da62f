import sys

from concatprover.cli import main

sys.exit(main())
