import sys

from mappedweno.cli import main

sys.exit(main())
