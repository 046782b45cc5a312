# -*- coding: utf-8 -*-
"""
    olsen.__about__
    ~~~~~~~~~~~~~~~
"""
__version__ = '0.1.0-dev'
__license__ = 'BSD'
__author__ = 'olsen contributors'
__maintainer__ = 'olsen contributors'
__maintainer_email__ = ''
