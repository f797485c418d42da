# bidisearch/utils/__init__.py
"""
Utility functions shared by the benchmark and the registry in hooks.py
"""

import importlib

from bidisearch.exceptions import UsageError


def get_attr(dotted_path):
    """Resolve "package.module.attribute" to the attribute"""
    module_name, _, attribute = dotted_path.rpartition(".")
    if not module_name:
        raise UsageError(f"not a dotted path: {dotted_path!r}")
    try:
        module = importlib.import_module(module_name)
    except ImportError as exc:
        raise UsageError(f"cannot import {module_name}: {exc}") from exc
    try:
        return getattr(module, attribute)
    except AttributeError as exc:
        raise UsageError(f"{module_name} has no attribute {attribute!r}") from exc


def resolve_hook(registry, name, kind="algorithm"):
    """Look name up in a hooks.py registry and resolve its dotted path"""
    if name not in registry:
        raise UsageError(f"unknown {kind} {name!r}; choose from {', '.join(sorted(registry))}")
    return get_attr(registry[name])
