# keeps the tests directory importable for the shared helper modules
