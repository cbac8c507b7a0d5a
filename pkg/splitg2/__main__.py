import sys

from splitg2.cli.main import main

sys.exit(main())
