# -*- coding: utf-8 -*-
#
# recipgalois documentation build configuration file.

import os
import sys
sys.path.insert(0, os.path.abspath('..'))

highlight_language = "python3"

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.mathjax',
    'sphinx.ext.napoleon',
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = 'recipgalois'
copyright = '2026, recipgalois developers'
author = 'recipgalois developers'

version = '0.1'
release = '0.1'

language = None
exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']
pygments_style = 'default'
todo_include_todos = False

html_theme = 'alabaster'
html_static_path = ['_static']
htmlhelp_basename = 'recipgaloisdoc'

latex_elements = {
}
latex_documents = [
    (master_doc, 'recipgalois.tex', 'recipgalois Documentation',
     author, 'manual'),
]
man_pages = [
    (master_doc, 'recipgalois', 'recipgalois Documentation',
     [author], 1)
]

# -- Napoleon settings ----------------------------------------------------
napoleon_google_docstring = False
napoleon_numpy_docstring = True
napoleon_include_private_with_doc = False
napoleon_include_special_with_doc = True
napoleon_use_admonition_for_examples = True
napoleon_use_admonition_for_notes = False
napoleon_use_admonition_for_references = False
napoleon_use_ivar = False
napoleon_use_param = True
napoleon_use_rtype = True
