#!/usr/bin/env python3
"""Download the SNAP EU email network into data/ for the acceptance tests.

Fetches email-Eu-core.txt.gz (directed email edges) and
email-Eu-core-department-labels.txt.gz (ground-truth departments) and
unpacks them next to each other.  Target directory defaults to ./data and
can be overridden with LINKCOHESION_DATA or --dest.
"""

import argparse
import gzip
import os
import shutil
import urllib.request

BASE = "https://snap.stanford.edu/data/"
FILES = ["email-Eu-core.txt.gz", "email-Eu-core-department-labels.txt.gz"]


def fetch(dest: str) -> None:
    os.makedirs(dest, exist_ok=True)
    for name in FILES:
        target = os.path.join(dest, name[: -len(".gz")])
        if os.path.exists(target):
            print(f"already present: {target}")
            continue
        url = BASE + name
        archive = os.path.join(dest, name)
        print(f"downloading {url}")
        urllib.request.urlretrieve(url, archive)
        with gzip.open(archive, "rb") as src, open(target, "wb") as out:
            shutil.copyfileobj(src, out)
        os.remove(archive)
        print(f"wrote {target}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument(
        "--dest",
        default=os.environ.get("LINKCOHESION_DATA", "data"),
        help="directory for the unpacked files (default: data/)",
    )
    fetch(ap.parse_args().dest)
