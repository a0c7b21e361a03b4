"""
Utility helper functions for the Hypertrans application.
Text formatting shared by the CLI and the HTTP routes.
"""

import hashlib
from typing import Any, Dict, Iterable


def generate_id(content: str, prefix: str = "id", length: int = 8) -> str:
    """
    Generate a unique ID based on content hash.

    Args:
        content: The content to hash
        prefix: Prefix for the ID
        length: Length of the hash portion

    Returns:
        Unique ID string
    """
    hash_value = hashlib.md5(content.encode()).hexdigest()[:length]
    return f"{prefix}_{hash_value}"


def format_context(context: Dict[str, Any]) -> str:
    """
    Format a dictionary as "key: value" lines.

    Args:
        context: Dictionary of values to report

    Returns:
        Formatted string, empty for an empty dictionary
    """
    if not context:
        return ""

    context_items = [f"{key}: {value}" for key, value in context.items()]
    return "\n".join(context_items)


def format_sets(sets: Iterable[Iterable[int]]) -> str:
    """One set per line, members separated by single spaces, newline-terminated."""
    return "".join(" ".join(str(v) for v in s) + "\n" for s in sets)


def split_list(value: str) -> list[str]:
    """Split a comma-separated option value, dropping blanks."""
    return [item.strip() for item in value.split(",") if item.strip()]
