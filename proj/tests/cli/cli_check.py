#!/usr/bin/env python3
"""Contract test for the sgspec command line tool.

Runs the binary given as argv[1] against every subcommand, checks headers,
a handful of frozen values, config/override precedence, --output routing,
and that repeated runs are byte-identical.
"""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

BIN = None
failures = 0


def run(*args, expect_ok=True, config_text=None):
    cmd = [BIN]
    tmp = None
    if config_text is not None:
        tmp = tempfile.NamedTemporaryFile("w", suffix=".json", delete=False)
        tmp.write(config_text)
        tmp.close()
        cmd += [args[0], "--config", tmp.name] + list(args[1:])
    else:
        cmd += list(args)
    proc = subprocess.run(cmd, capture_output=True, text=True, timeout=240)
    if tmp is not None:
        Path(tmp.name).unlink()
    if expect_ok and proc.returncode != 0:
        raise AssertionError(
            f"{' '.join(cmd)} exited {proc.returncode}\nstderr: {proc.stderr}"
        )
    return proc


def check(name, cond, detail=""):
    global failures
    if cond:
        print(f"ok: {name}")
    else:
        failures += 1
        print(f"FAIL: {name} {detail}")


def main():
    global BIN
    BIN = sys.argv[1]

    # --- determinism: identical bytes across repeated invocations
    for args in (
        ("eigs", "--cycles", "2"),
        ("eigs", "--family", "3", "--count", "8"),
        ("julia", "measure", "--depth", "8", "--format", "json"),
        ("weyl", "--samples", "40"),
    ):
        a = run(*args).stdout
        b = run(*args).stdout
        check(f"deterministic: {' '.join(args)}", a == b)

    # --- catalog listing
    out = run("eigs", "--cycles", "2").stdout.splitlines()
    check(
        "catalog header",
        out[0] == "value,cycle,row,mult_neumann,mult_dirichlet,mult_tilde,label",
        out[0],
    )
    check("catalog rows: zero line + two cycles", len(out) == 1 + 21, str(len(out)))
    check("zero line first", out[1].endswith(",zero"), out[1])

    out = run("eigs", "--family", "3", "--count", "8").stdout.splitlines()
    check("family header", out[0] == "family,rank,level,word,value", out[0])
    check("family rows", len(out) == 9, str(len(out)))
    values = [float(line.rsplit(",", 1)[1]) for line in out[1:]]
    check("family values ascending", values == sorted(values))

    # --- counting
    data = json.loads(
        run("count", "--at-eigenvalue", "3,1", "--power", "2", "--format", "json").stdout
    )
    check(
        "count at the first ninth-row line",
        data["count_tilde"] == 27
        and data["count_neumann"] == 15
        and data["count_dirichlet"] == 12
        and data["at_eigenvalue"] is True,
        json.dumps(data),
    )
    out = run("count", "1e-9").stdout.splitlines()
    check(
        "count just above zero",
        out[0] == "t,count_neumann,count_dirichlet,count_tilde,at_eigenvalue"
        and out[1].split(",")[1:] == ["1", "0", "1", "0"],
        repr(out),
    )

    # --- verify
    check("verify lemma exits 0", run("verify", "lemma", "--n-max", "8", "--j-max", "3").returncode == 0)
    data = json.loads(run("verify", "table", "--k-max", "8", "--format", "json").stdout)
    check(
        "verify table json",
        data["pass"] is True
        and data["suites"][0]["suite"] == "table"
        and all(c["pass"] for c in data["suites"][0]["checks"]),
    )

    # --- julia
    out = run("julia", "cover", "--depth", "3").stdout.splitlines()
    check("cover header", out[0] == "depth,word,lo,hi,length", out[0])
    check("cover rows: 2^3 intervals", len(out) == 9, str(len(out)))
    data = json.loads(run("julia", "classify", "--t", "2.5", "--depth", "5", "--format", "json").stdout)
    check(
        "classify the center point",
        data["in_gap"] is True and data["heap_index"] == 1 and data["generation"] == 0,
        json.dumps(data),
    )
    data = json.loads(run("julia", "measure", "--depth", "4", "--format", "json").stdout)
    check(
        "measure levels sum to five",
        len(data["levels"]) == 4
        and all(abs(l["cover_measure"] + l["gap_measure"] - 5.0) < 1e-9 for l in data["levels"]),
    )

    # --- oracle
    out = run("oracle", "--level", "2", "--space", "sg", "--condition", "dirichlet").stdout.splitlines()
    check(
        "oracle header",
        out[0] == "level,space,condition,eigenvalue,multiplicity,closure_status",
        out[0],
    )
    check("oracle rows present", len(out) > 3, str(len(out)))
    data = json.loads(run("oracle", "--level", "2", "--closure", "--format", "json").stdout)
    check(
        "closure report",
        data["pass"] is True and len(data["levels"]) == 2 and data["levels"][0]["free_count"] == 9,
    )

    # --- weyl
    data = json.loads(run("weyl", "--at", "769.8416188731344", "--m-max", "4", "--format", "json").stdout)
    check(
        "theorem report at a gap midpoint",
        data["pass"] is True
        and data["g_coefficient"] == 27
        and data["m0"] == 0
        and len(data["checks"]) == 5,
        json.dumps(data)[:200],
    )
    out = run("weyl", "--samples", "40").stdout.splitlines()
    check(
        "scan header",
        out[0] == "t,ratio_tilde,ratio_neumann,ratio_dirichlet,membership,G,G1",
        out[0],
    )
    check("scan rows", len(out) == 41, str(len(out)))

    # --- config file and precedence
    out = run("count", "1e-9", config_text='{"format": "json"}').stdout
    check("config file switches to json", out.lstrip().startswith("{"))
    out = run("count", "1e-9", "--format", "csv", config_text='{"format": "json"}').stdout
    check("flag overrides config", out.startswith("t,"))
    proc = run("count", "1e-9", config_text='{"formt": "json"}', expect_ok=False)
    check("unknown config key rejected", proc.returncode != 0)

    # --- output routing
    with tempfile.TemporaryDirectory() as d:
        path = Path(d) / "out.csv"
        direct = run("eigs", "--cycles", "1").stdout
        run("eigs", "--cycles", "1", "--output", str(path))
        check("--output matches stdout bytes", path.read_text() == direct)

    # --- failure modes
    check("unknown subcommand fails", run("nonsense", expect_ok=False).returncode != 0)
    check("bad family rejected", run("eigs", "--family", "4", expect_ok=False).returncode != 0)

    print(f"{failures} failure(s)")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
