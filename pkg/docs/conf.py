#!/usr/bin/env python
""" Sphinx configuration for the pylogharmonic documentation """
import os
import sys

sys.path.insert(0, os.path.abspath('..'))

import pylogharmonic  # noqa: E402

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.viewcode',
    'sphinx.ext.mathjax',
]
autodoc_member_order = 'bysource'

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = 'pylogharmonic'
copyright = "2021, craftworks"
author = "craftworks"

version = pylogharmonic.__version__
release = pylogharmonic.__version__

exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']
pygments_style = 'sphinx'

# -- HTML --------------------------------------------------------------

html_theme = 'alabaster'
html_static_path = ['_static']
htmlhelp_basename = 'pylogharmonicdoc'

# -- LaTeX, man pages and Texinfo --------------------------------------

latex_documents = [
    (master_doc, 'pylogharmonic.tex', 'pylogharmonic Documentation',
     author, 'manual'),
]

man_pages = [(master_doc, 'pylogharmonic', 'pylogharmonic Documentation',
              [author], 1)]

texinfo_documents = [
    (master_doc, 'pylogharmonic', 'pylogharmonic Documentation', author,
     'pylogharmonic', 'Logharmonic mappings with typically real rotations.',
     'Miscellaneous'),
]
