#!/usr/bin/python
# -*- coding: UTF-8 -*-

import os
import sys

sys.path.insert( 0, os.path.abspath( "../" ) )

project = u'SSP'
author = u'the SSP developers'
copyright = u'2026, ' + author

try:
    from version import __version__
except ImportError:
    __version__ = "dev"

version = release = __version__

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.viewcode',
    'sphinx_git'
]

master_doc = 'index'
exclude_patterns = [ '_build' ]

html_theme = 'classic'
html_show_sphinx = False
