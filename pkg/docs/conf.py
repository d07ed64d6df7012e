# -*- coding: utf-8 -*-
#
# py-cyclepatterns documentation build configuration file.

import sys
import os

sys.path.insert(0, os.path.abspath('../'))

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.doctest',
    'sphinx.ext.intersphinx',
    'sphinx.ext.mathjax',
    'sphinx.ext.viewcode',
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'py-cyclepatterns'
copyright = u'2026, py-cyclepatterns contributors'
author = u'py-cyclepatterns contributors'

version = '0.1'
release = '0.1.0'

exclude_patterns = ['_build']
pygments_style = 'sphinx'

autodoc_member_order = 'bysource'

html_theme = 'default'
html_static_path = ['_static']
htmlhelp_basename = 'py-cyclepatternsdoc'

man_pages = [
    (master_doc, 'py-cyclepatterns', u'py-cyclepatterns Documentation',
     [author], 1)
]

intersphinx_mapping = {'python': ('https://docs.python.org/3', None),
                       'sympy': ('https://docs.sympy.org/latest', None)}
