import sys

from spherelp.cli.main import main

sys.exit(main())
