from heckemod.cli.main import run

run()
