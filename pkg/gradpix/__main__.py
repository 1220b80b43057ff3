import sys

from gradpix.main import main

sys.exit(main())
