from arcperm.cli import entrypoint

if __name__ == '__main__':
    """
    examples:

    python -m arcperm stats "9 5 6 7 8 3 2 1 4 12 11 10"
    python -m arcperm psi "2 3 1"
    python -m arcperm table --stat crossing --max-n 9 --out table2.csv
    python -m arcperm joint --n 7 --by-degree
    python -m arcperm verify --check involution --n 7 --samples 10000
    python -m arcperm render "9 5 6 7 8 3 2 1 4 12 11 10" --format svg --out figure1.svg
    """
    entrypoint()
