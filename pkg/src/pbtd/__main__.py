from pbtd.cli import run

run()
