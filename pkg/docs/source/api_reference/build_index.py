"""Write the api_reference index from the pages sphinx-apidoc generated."""

from pathlib import Path

API_DIR = Path("docs/source/api_reference")
HEADER = "API Reference\n=============\n\n"


def main() -> None:
    """Rewrite index.rst with one toctree entry per generated module page."""
    pages = sorted(p.stem for p in API_DIR.glob("*.rst") if p.name != "index.rst")
    entries = "\n".join(f"   {page}" for page in pages)
    toctree = ".. toctree::\n   :maxdepth: 2\n\n" + entries + "\n"
    (API_DIR / "index.rst").write_text(HEADER + toctree, encoding="utf-8")
    print(f"Wrote {API_DIR / 'index.rst'} with {len(pages)} entries.")


if __name__ == "__main__":
    main()
