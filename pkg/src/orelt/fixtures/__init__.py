"""Example presentations, graphs of groups and certificates shipped with orelt."""
from pathlib import Path

DIR = Path(__file__).parent


def path(name: str) -> Path:
    p = DIR / name
    if not p.is_file():
        raise FileNotFoundError(f"no fixture named {name!r}")
    return p


def read(name: str) -> str:
    return path(name).read_text()


def names():
    return sorted(p.name for p in DIR.iterdir() if p.suffix in (".pres", ".gog", ".cert"))
