#!/usr/bin/python
# -*- coding: UTF-8 -*-

import sys

from SSP.cli import main

sys.exit( main() )
