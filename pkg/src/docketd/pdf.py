"""Tiny deterministic PDF writer: one flowing column of Helvetica text.

No creation timestamps, document IDs, or compression go into the output, so
identical input lines produce identical bytes, and extract_text() recovers
the lines from the uncompressed content streams.
"""

from __future__ import annotations

import re
from typing import Iterable, Optional

PAGE_WIDTH = 612
PAGE_HEIGHT = 792
MARGIN = 54
TOP_Y = 730
LINE_HEIGHT = 14
BODY_FONT_SIZE = 10
TITLE_FONT_SIZE = 14
TITLE_GAP = 22


def _escape(text: str) -> str:
    return text.replace("\\", r"\\").replace("(", r"\(").replace(")", r"\)")


def _page_content(lines: list[str], title: Optional[str]) -> bytes:
    ops = ["BT"]
    y = TOP_Y
    if title is not None:
        ops.append(f"/F1 {TITLE_FONT_SIZE} Tf")
        ops.append(f"{MARGIN} {y} Td")
        ops.append(f"({_escape(title)}) Tj")
        ops.append(f"/F1 {BODY_FONT_SIZE} Tf")
        ops.append(f"0 -{TITLE_GAP} Td")
        y -= TITLE_GAP
    else:
        ops.append(f"/F1 {BODY_FONT_SIZE} Tf")
        ops.append(f"{MARGIN} {y} Td")
    first = title is None
    for line in lines:
        if not first:
            ops.append(f"0 -{LINE_HEIGHT} Td")
        ops.append(f"({_escape(line)}) Tj")
        first = False
    ops.append("ET")
    return "\n".join(ops).encode("latin-1", "replace")


def _paginate(lines: list[str]) -> list[list[str]]:
    # First page loses one slot to the title block.
    per_page = (TOP_Y - MARGIN) // LINE_HEIGHT
    pages: list[list[str]] = []
    remaining = list(lines)
    first_capacity = max(per_page - 2, 1)
    pages.append(remaining[:first_capacity])
    remaining = remaining[first_capacity:]
    while remaining:
        pages.append(remaining[:per_page])
        remaining = remaining[per_page:]
    return pages


def render_text_document(lines: Iterable[str], *, title: str) -> bytes:
    """Render a title plus body lines into a paginated single-column PDF."""
    pages = _paginate(list(lines))
    # Objects: 1 catalog, 2 page tree, 3 font, then (page, content) per page.
    page_object_ids = [4 + 2 * i for i in range(len(pages))]
    kids = " ".join(f"{oid} 0 R" for oid in page_object_ids)

    objects: list[bytes] = [
        b"<< /Type /Catalog /Pages 2 0 R >>",
        f"<< /Type /Pages /Kids [{kids}] /Count {len(pages)} >>".encode("ascii"),
        b"<< /Type /Font /Subtype /Type1 /BaseFont /Helvetica >>",
    ]
    for i, page_lines in enumerate(pages):
        content = _page_content(page_lines, title if i == 0 else None)
        objects.append(
            (
                f"<< /Type /Page /Parent 2 0 R /MediaBox [0 0 {PAGE_WIDTH} {PAGE_HEIGHT}] "
                f"/Resources << /Font << /F1 3 0 R >> >> /Contents {page_object_ids[i] + 1} 0 R >>"
            ).encode("ascii")
        )
        objects.append(
            b"<< /Length %d >>\nstream\n%s\nendstream" % (len(content), content)
        )

    out = bytearray(b"%PDF-1.4\n")
    offsets: list[int] = []
    for number, body in enumerate(objects, start=1):
        offsets.append(len(out))
        out += b"%d 0 obj\n" % number
        out += body
        out += b"\nendobj\n"
    xref_start = len(out)
    out += b"xref\n0 %d\n" % (len(objects) + 1)
    out += b"0000000000 65535 f \n"
    for offset in offsets:
        out += b"%010d 00000 n \n" % offset
    out += b"trailer\n<< /Size %d /Root 1 0 R >>\n" % (len(objects) + 1)
    out += b"startxref\n%d\n%%%%EOF\n" % xref_start
    return bytes(out)


_TJ_PATTERN = re.compile(rb"\(((?:\\.|[^()\\])*)\)\s*Tj")
_UNESCAPES = {rb"\\": b"\\", rb"\(": b"(", rb"\)": b")"}


def extract_text(data: bytes) -> list[str]:
    """Recover the shown text lines (title first) from a rendered document."""
    lines = []
    for match in _TJ_PATTERN.finditer(data):
        raw = match.group(1)
        for escaped, plain in _UNESCAPES.items():
            raw = raw.replace(escaped, plain)
        lines.append(raw.decode("latin-1"))
    return lines
