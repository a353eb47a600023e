import json
import os
import sys

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from utils.loaders import dump  # noqa: E402
from utils.services.fixture_service import FIXTURES, fixture  # noqa: E402

DATA = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "data")


def setup() -> None:
    print("WRITING FIXTURES...")
    os.makedirs(DATA, exist_ok=True)
    for name in FIXTURES:
        path = os.path.join(DATA, f"{name}.json")
        with open(path, "w", encoding="utf-8") as f:
            json.dump(dump(fixture(name)), f, indent=2)
            f.write("\n")
        print(f"  {path}")
    print("DONE")


if __name__ == "__main__":
    setup()
