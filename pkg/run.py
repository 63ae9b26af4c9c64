#!/usr/bin/env python3
"""
Simple runner script for FIREGRID
"""

import sys
import subprocess


def run_cli(args):
    """Forward to the firegrid command line"""
    return subprocess.run([sys.executable, "-m", "firegrid", *args]).returncode


def run_figures():
    """Reproduce both closure figures as traces, SVG and ASCII"""
    print("🔥 Reproducing closure figures...")
    code = 0
    for name in ("figure1", "example1"):
        code |= run_cli([
            "simulate", f"scenario:{name}",
            "--out", f"out/{name}.trace",
            "--svg", f"out/{name}.svg",
            "--ascii", f"out/{name}.txt",
        ])
    return code


def run_duel():
    """Play the standard strategy x adversary matrix"""
    print("⚔️ Running duel matrix...")
    return run_cli([
        "duel",
        "--strategy", "wall", "--strategy", "restart16", "--strategy", "idle",
        "--adversary", "thm1", "--adversary", "fixed:1,1,1,13",
    ])


def run_search():
    """Bounded minimax against the adaptive adversary"""
    print("🔍 Searching every placement sequence against thm1...")
    return run_cli(["search", "--adversary", "thm1", "--radius", "6", "--horizon", "5"])


def verify_claims():
    """Run the claim checklist"""
    print("✅ Verifying claims...")
    return subprocess.run([sys.executable, "scripts/verify_claims.py"]).returncode


def run_tests():
    """Run the test suite"""
    print("🧪 Running tests...")
    return subprocess.run([sys.executable, "-m", "pytest", "tests"]).returncode


def show_help():
    """Show available commands"""
    print("""
🔥 FIREGRID - Available Commands:

  figures     Reproduce the two closure figures into out/
  duel        Play wall, restart16 and idle against thm1 and fixed:1,1,1,13
  search      Bounded minimax against thm1 (radius 6, horizon 5)
  verify      Print the claim checklist
  test        Run the test suite
  cli         Pass the remaining arguments to the firegrid CLI
  help        Show this help message

Usage:
  python run.py <command>

Examples:
  python run.py figures
  python run.py cli simulate scenario:thm1-vs-wall
  python run.py cli certify out/figure1.trace
""")


if __name__ == "__main__":
    if len(sys.argv) < 2:
        show_help()
        sys.exit(1)

    command = sys.argv[1].lower()

    if command == "figures":
        sys.exit(run_figures())
    elif command == "duel":
        sys.exit(run_duel())
    elif command == "search":
        sys.exit(run_search())
    elif command == "verify":
        sys.exit(verify_claims())
    elif command == "test":
        sys.exit(run_tests())
    elif command == "cli":
        sys.exit(run_cli(sys.argv[2:]))
    elif command == "help":
        show_help()
    else:
        print(f"❌ Unknown command: {command}")
        show_help()
        sys.exit(1)
