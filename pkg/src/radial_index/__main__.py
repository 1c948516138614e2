from radial_index.cli import run

run()
