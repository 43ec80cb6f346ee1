#!/usr/bin/python
# -*- coding: UTF-8 -*-

from .SSP.__init__ import *
from .SSP.tableau.functions import *
from .SSP.circuit.functions import *
