"""End-to-end checks of the command line tool against real files.

Usage: python3 test_cli.py <path-to-cli> <path-to-data-dir>
"""

import pathlib
import subprocess
import sys
import tempfile

CLI = None
DATA = None
failures = []


def run(*args, **kwargs):
    return subprocess.run([CLI, *args], capture_output=True, text=True, **kwargs)


def check(name, cond, detail=""):
    if cond:
        print(f"  pass: {name}")
    else:
        failures.append(name)
        print(f"  FAIL: {name} {detail}")


def expect(name, result, code, stdout=None):
    ok = result.returncode == code and (stdout is None or result.stdout == stdout)
    check(name, ok,
          f"(rc={result.returncode}, stdout={result.stdout!r}, stderr={result.stderr!r})")


def main():
    tmp = pathlib.Path(tempfile.mkdtemp(prefix="imcol-cli-"))
    c4 = str(DATA / "c4.imcg")
    c4col = str(DATA / "c4-interval.imcol")
    star = str(DATA / "k13.imcg")
    inst = str(DATA / "list-instance.imcg")
    pre = str(DATA / "list-instance.pre")

    # Validation verdicts and exit codes.
    expect("validate interval ok",
           run("validate", "--graph", c4, "--coloring", c4col, "--mode", "interval",
               "--part", "all", "--t", "3"), 0, "ok\n")
    expect("validate proper ok",
           run("validate", "--graph", c4, "--coloring", c4col, "--mode", "proper",
               "--part", "all"), 0, "ok\n")
    expect("validate continuous rejects",
           run("validate", "--graph", c4, "--coloring", c4col, "--mode", "continuous",
               "--part", "all", "--t", "3"), 1, "invalid\n")
    expect("validate needs --t for interval",
           run("validate", "--graph", c4, "--coloring", c4col, "--mode", "interval",
               "--part", "all"), 2)
    expect("validate rejects unknown mode",
           run("validate", "--graph", c4, "--coloring", c4col, "--mode", "rainbow",
               "--part", "all", "--t", "3"), 2)
    expect("validate part list",
           run("validate", "--graph", c4, "--coloring", c4col, "--mode", "interval",
               "--part", "list:1,2", "--t", "3"), 0, "ok\n")
    expect("validate rejects bad part list",
           run("validate", "--graph", c4, "--coloring", c4col, "--mode", "interval",
               "--part", "list:1,9", "--t", "3"), 2)

    # Oracle queries.
    expect("oracle W", run("oracle", "--graph", c4, "--compute", "W", "--part", "all"),
           0, "exists t=3\n")
    expect("oracle w", run("oracle", "--graph", c4, "--compute", "w", "--part", "all"),
           0, "exists t=2\n")
    expect("oracle chi", run("oracle", "--graph", c4, "--compute", "chi", "--part", "all"),
           0, "exists t=2\n")
    expect("oracle member", run("oracle", "--graph", c4, "--compute", "member", "--part", "all"),
           0, "exists t=2\n")
    expect("oracle exists", run("oracle", "--graph", c4, "--compute", "exists", "--part", "all",
                                "--t", "3"), 0, "exists t=3\n")
    expect("oracle not-exists", run("oracle", "--graph", c4, "--compute", "exists",
                                    "--part", "all", "--t", "4"), 1, "not-exists\n")
    expect("oracle capped", run("oracle", "--graph", c4, "--compute", "W", "--part", "all",
                                "--cap", "1"), 3, "capped\n")
    expect("oracle exists needs --t",
           run("oracle", "--graph", c4, "--compute", "exists", "--part", "all"), 2)
    expect("oracle chi wants part all",
           run("oracle", "--graph", c4, "--compute", "chi", "--part", "part1"), 2)
    jobs1 = run("oracle", "--graph", c4, "--compute", "W", "--part", "all", "--jobs", "1")
    jobs4 = run("oracle", "--graph", c4, "--compute", "W", "--part", "all", "--jobs", "4")
    check("oracle jobs agree", jobs1.stdout == jobs4.stdout and jobs1.returncode ==
          jobs4.returncode, f"({jobs1.stdout!r} vs {jobs4.stdout!r})")

    # Constructions.
    out = tmp / "star.imcol"
    expect("color theorem4", run("color", "--alg", "theorem4", "--graph", star,
                                 "-o", str(out)), 0, "ok\n")
    check("color theorem4 bytes",
          out.read_text() == "p imcol 3 3\nc 1 1\nc 2 2\nc 3 3\n", out.read_text())
    expect("written coloring revalidates",
           run("validate", "--graph", star, "--coloring", str(out), "--mode", "continuous",
               "--part", "part1", "--t", "3"), 0, "ok\n")

    out = tmp / "seq.imcol"
    expect("color sequential", run("color", "--alg", "sequential", "--graph", c4,
                                   "-o", str(out)), 0, "ok\n")
    expect("sequential revalidates",
           run("validate", "--graph", c4, "--coloring", str(out), "--mode", "interval",
               "--part", "part1", "--t", "4"), 0, "ok\n")

    out = tmp / "spec3.imcol"
    expect("spectrum t=3", run("spectrum", "--graph", c4, "--t", "3", "-o", str(out)),
           0, "ok\n")
    expect("spectrum output revalidates",
           run("validate", "--graph", c4, "--coloring", str(out), "--mode", "interval",
               "--part", "part1", "--t", "3"), 0, "ok\n")
    expect("spectrum out of range", run("spectrum", "--graph", c4, "--t", "5",
                                        "-o", str(tmp / "no.imcol")), 2)

    # Recolorings.
    out = tmp / "folded.imcol"
    expect("compress", run("compress", "--graph", c4, "--coloring", c4col, "-o", str(out)),
           0, "ok\n")
    check("compress bytes", out.read_text() == "p imcol 4 2\nc 1 1\nc 2 2\nc 3 1\nc 4 2\n",
          out.read_text())
    out = tmp / "down.imcol"
    expect("downshift", run("downshift", "--graph", c4, "--coloring", c4col, "-o", str(out)),
           0, "ok\n")
    check("downshift bytes", out.read_text() == "p imcol 4 2\nc 1 1\nc 2 2\nc 3 1\nc 4 2\n",
          out.read_text())
    expect("downshift rejects non-regular",
           run("downshift", "--graph", star, "--coloring", str(tmp / "star.imcol"),
               "-o", str(tmp / "no.imcol")), 2)

    # The reduction: emitted ids put part 1 first; the trace follows them.
    gout = tmp / "widened.imcg"
    tout = tmp / "widened.trace"
    expect("gadget", run("gadget", "--graph", inst, "--pre", pre, "-o", str(gout),
                         "--trace", str(tout)), 0, "ok\n")
    expected_graph = ("p imcg 10 12\nb 5\n"
                      "e 1 6\ne 1 7\ne 8 2\ne 8 3\ne 6 2\ne 6 2\ne 7 3\ne 7 3\n"
                      "e 1 9\ne 9 4\ne 8 5\ne 5 10\n")
    check("gadget graph bytes", gout.read_text() == expected_graph, gout.read_text())
    expected_trace = ("map 1 h:1\nmap 2 h':2\nmap 3 h':3\nmap 4 p2:1\nmap 5 p1:8\n"
                      "map 6 h:2\nmap 7 h:3\nmap 8 h':1\nmap 9 p1:1\nmap 10 p2:8\n")
    check("gadget trace bytes", tout.read_text() == expected_trace, tout.read_text())
    expect("gadget output reparses",
           run("oracle", "--graph", str(gout), "--compute", "chi", "--part", "all",
               "--cap", "100000"), 0, "exists t=3\n")
    gout2 = tmp / "widened2.imcg"
    run("gadget", "--graph", inst, "--pre", pre, "-o", str(gout2))
    check("gadget deterministic", gout.read_text() == gout2.read_text())

    # Corpus writer.
    d1 = tmp / "corpus1"
    d2 = tmp / "corpus2"
    expect("enumerate", run("enumerate", "--max-n1", "1", "--max-n2", "1", "--max-m", "2",
                            "-o", str(d1)), 0, "ok count=2\n")
    run("enumerate", "--max-n1", "1", "--max-n2", "1", "--max-m", "2", "-o", str(d2))
    names1 = sorted(p.name for p in d1.iterdir())
    check("enumerate files", names1 == ["g000001.imcg", "g000002.imcg"], names1)
    check("enumerate deterministic",
          [p.read_text() for p in sorted(d1.iterdir())] ==
          [p.read_text() for p in sorted(d2.iterdir())])
    expect("enumerated file reparses",
           run("oracle", "--graph", str(d1 / "g000002.imcg"), "--compute", "w",
               "--part", "part1"), 0, "exists t=2\n")

    # Plumbing errors.
    expect("missing file", run("validate", "--graph", str(tmp / "absent.imcg"),
                               "--coloring", c4col, "--mode", "proper", "--part", "all"), 2)
    expect("no subcommand", run(), 2)
    expect("unknown flag", run("oracle", "--graph", c4, "--compute", "W", "--part", "all",
                               "--frobnicate"), 2)
    r = run("--help")
    check("help exits zero", r.returncode == 0 and "validate" in r.stdout)

    print()
    if failures:
        print(f"{len(failures)} failing check(s): {failures}")
        return 1
    print("all cli checks passed")
    return 0


if __name__ == "__main__":
    CLI = sys.argv[1]
    DATA = pathlib.Path(sys.argv[2])
    sys.exit(main())
