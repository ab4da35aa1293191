#!/usr/bin/env python3
"""Write the canonical benchmark files into a data directory.

Usage: fetch_datasets.py [DATA_DIR]   (default: $QFDT_DATA_DIR or ./data)

Sources are tried in order for each dataset. The UCI repository is the
primary source; when it is unreachable the script falls back to copies
shipped inside PyPI packages and rewrites them in the UCI layout:

  haberman.data                 imbalanced-databases (KEEL copy, row order differs)
  breast-cancer-wisconsin.data  rdatasets MASS/biopsy (same rows and order as UCI)
  seeds_dataset.txt             UCI only
"""
import lzma
import os
import pickle
import subprocess
import sys
import tempfile
import urllib.request
import zipfile

UCI = "https://archive.ics.uci.edu/ml/machine-learning-databases"
URLS = {
    "haberman.data": f"{UCI}/haberman/haberman.data",
    "breast-cancer-wisconsin.data": f"{UCI}/breast-cancer-wisconsin/breast-cancer-wisconsin.data",
    "seeds_dataset.txt": f"{UCI}/00236/seeds_dataset.txt",
}


def fetch_url(url):
    with urllib.request.urlopen(url, timeout=20) as r:
        return r.read().decode()


def pip_wheel(name, workdir):
    subprocess.run(
        [sys.executable, "-m", "pip", "download", "--no-deps", "-q", "--disable-pip-version-check", name, "-d", workdir],
        check=True,
    )
    for f in os.listdir(workdir):
        if f.lower().startswith(name.replace("-", "_")) and f.endswith(".whl"):
            return zipfile.ZipFile(os.path.join(workdir, f))
    raise FileNotFoundError(name)


def haberman_fallback(workdir):
    z = pip_wheel("imbalanced-databases", workdir)
    raw = z.read("imbalanced_databases/data/haberman/haberman.dat").decode()
    out = []
    for line in raw.splitlines():
        line = line.strip()
        if not line or line.startswith("@"):
            continue
        age, year, nodes, cls = [t.strip() for t in line.split(",")]
        # KEEL marks "died within 5 years" as positive; UCI codes it 2.
        out.append(f"{age},{year},{nodes},{2 if cls == 'positive' else 1}")
    return "\n".join(out) + "\n"


def wisconsin_fallback(workdir):
    z = pip_wheel("rdatasets", workdir)
    blob = z.read("rdatasets/_data/MASS/biopsy.pkl.compress")
    import pandas  # noqa: F401  (needed to unpickle)
    df = pickle.loads(lzma.decompress(blob))
    out = []
    for _, r in df.iterrows():
        cells = [str(r["ID"])]
        for k in range(1, 10):
            v = r[f"V{k}"]
            cells.append("?" if v != v else str(int(v)))
        cells.append("2" if r["class"] == "benign" else "4")
        out.append(",".join(cells))
    return "\n".join(out) + "\n"


FALLBACKS = {
    "haberman.data": haberman_fallback,
    "breast-cancer-wisconsin.data": wisconsin_fallback,
}


def main():
    target = sys.argv[1] if len(sys.argv) > 1 else os.environ.get("QFDT_DATA_DIR", "data")
    os.makedirs(target, exist_ok=True)
    missing = []
    with tempfile.TemporaryDirectory() as work:
        for name, url in URLS.items():
            path = os.path.join(target, name)
            if os.path.exists(path):
                print(f"{name}: present")
                continue
            text = None
            try:
                text = fetch_url(url)
                src = url
            except Exception as e:
                print(f"{name}: {url} unreachable ({e})", file=sys.stderr)
                if name in FALLBACKS:
                    text = FALLBACKS[name](work)
                    src = "PyPI fallback"
            if text is None:
                missing.append(name)
                continue
            with open(path, "w") as f:
                f.write(text)
            print(f"{name}: wrote {len(text.splitlines())} rows from {src}")
    if missing:
        print("missing: " + ", ".join(missing), file=sys.stderr)
        sys.exit(1)


if __name__ == "__main__":
    main()
