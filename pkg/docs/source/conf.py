# Sphinx configuration for the embedcheck API reference.
#
# https://www.sphinx-doc.org/en/master/usage/configuration.html

import os
import sys


sys.path.insert(0, os.path.abspath("../../src"))

project = "embedcheck"
copyright = "2025, Nicola Gentile, Marco Faella, Gennaro Parlato"
author = "Gennaro Parlato, Marco Faella, Nicola Gentile"
release = "0.1.0"

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.napoleon",
    "sphinx.ext.viewcode",
    "sphinx.ext.intersphinx",
    "sphinx.ext.mathjax",
    "sphinx_autodoc_typehints",
]

templates_path = ["_templates"]
exclude_patterns = []

html_theme = "sphinx_rtd_theme"
html_static_path = ["_static"]
html_theme_options = {
    "collapse_navigation": True,
    "sticky_navigation": True,
    "navigation_depth": 3,
}

autodoc_default_options = {
    "members": True,
    "member-order": "bysource",
    "undoc-members": True,
    "exclude-members": "__weakref__, __post_init__",
}


# private helpers stay out of the reference
def autodoc_skip_member(app, what, name, obj, skip, options):
    if name.startswith("_"):
        return True
    return skip


napoleon_google_docstring = True
napoleon_numpy_docstring = False
napoleon_include_init_with_doc = False
napoleon_use_param = True
napoleon_use_rtype = True
napoleon_attr_annotations = True

intersphinx_mapping = {
    "python": ("https://docs.python.org/3", None),
    "sympy": ("https://docs.sympy.org/latest", None),
}

typehints_use_rtype = False
always_document_param_types = True
typehints_fully_qualified = False
typehints_use_signature = True
typehints_use_signature_return = True

autodoc_type_aliases = {
    "FactorPredicate": "embedcheck.structure.radicals.FactorPredicate",
    "PropertyName": "embedcheck.props.embedding.PropertyName",
    "CaseStatus": "embedcheck.harness.report.CaseStatus",
    "InstanceStatus": "embedcheck.harness.report.InstanceStatus",
}


def setup(app):
    app.connect("autodoc-skip-member", autodoc_skip_member)
