# Copyright 2026 mctsynth authors.
# See LICENSE file for licensing details.

"""Rendering of the text files shipped as jinja2 templates."""

from pathlib import Path
from typing import Any

from jinja2 import Environment, FileSystemLoader

TEMPLATES_DIR = Path(__file__).parent / "templates"


def render(template_name: str, **context: Any) -> str:
    """Render one of the package templates.

    Block tags do not leave blank lines behind and the final newline is kept.
    """
    jinja2_env = Environment(
        loader=FileSystemLoader(TEMPLATES_DIR),
        trim_blocks=True,
        lstrip_blocks=True,
        keep_trailing_newline=True,
    )
    return jinja2_env.get_template(template_name).render(**context)
