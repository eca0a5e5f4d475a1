# Copyright 2026 mctsynth authors.
# See LICENSE file for licensing details.

"""Cost table of the cheapest known Toffoli networks per size and garbage class."""

import csv
import io
import logging
from typing import List, Optional, Sequence

from mctsynth.config import SynthesisConfig
from mctsynth.cost import CostRow
from mctsynth.decomposition import synthesize
from mctsynth.errors import OutOfRangeError
from mctsynth.templating import render

logger = logging.getLogger(__name__)

CSV_COLUMNS = ["size", "garbage", "cost", "strategy"]
TABLE_TEMPLATE = "cost_table.txt.j2"
FIRST_GARBAGE_SIZE = 6


def garbage_classes(size: int) -> List[int]:
    """Return the garbage budgets tabulated for a gate size: 0, then 1 and size-3 from 6 on."""
    if size < FIRST_GARBAGE_SIZE:
        return [0]
    return [0, 1, size - 3]


def cost_table(max_size: int, config: Optional[SynthesisConfig] = None) -> List[CostRow]:
    """Synthesize the cheapest network for every tabulated size and garbage budget.

    Rows are ordered by size, then garbage budget.

    Raises:
        OutOfRangeError: if max_size < 1.
    """
    if max_size < 1:
        raise OutOfRangeError("max_size", max_size, "must be at least 1")
    config = config or SynthesisConfig()
    rows = []
    for size in range(1, max_size + 1):
        for garbage in garbage_classes(size):
            result = synthesize(size, garbage, config=config)
            rows.append(
                CostRow(
                    size=size,
                    garbage=garbage,
                    cost=result.cost,
                    strategy=result.strategy,
                    uses_peres=result.uses_peres,
                )
            )
    logger.info("Computed %d cost table rows up to size %d", len(rows), max_size)
    return rows


def render_csv(rows: Sequence[CostRow]) -> str:
    """Return the rows as CSV with a `size,garbage,cost,strategy` header."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        writer.writerow([row.size, row.garbage, row.cost, row.strategy])
    return buffer.getvalue()


def render_table(rows: Sequence[CostRow]) -> str:
    """Return the rows as aligned text; costs of networks using Peres gates carry a `*`."""
    return render(TABLE_TEMPLATE, rows=rows)
