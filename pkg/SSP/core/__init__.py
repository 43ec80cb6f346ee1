#!/usr/bin/python
# -*- coding: UTF-8 -*-
