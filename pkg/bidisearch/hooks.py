# bidisearch/hooks.py
app_name = "bidisearch"
app_title = "Bidirectional Heuristic Search"
app_description = "Admissible uni- and bidirectional heuristic search with a benchmark harness"

# Benchmark algorithms: name -> runner(domain, config) -> SearchResult
algorithms = {
    "astar": "bidisearch.bench.adapters.run_astar",
    "idastar": "bidisearch.bench.adapters.run_idastar",
    "idastar_probing": "bidisearch.bench.adapters.run_idastar_probing",
    "trans": "bidisearch.bench.adapters.run_trans",
    "bhpa": "bidisearch.bench.adapters.run_bhpa",
    "bsstar": "bidisearch.bench.adapters.run_bsstar",
    "perimeter_astar": "bidisearch.bench.adapters.run_perimeter_astar",
    "perimeter_idastar": "bidisearch.bench.adapters.run_perimeter_idastar",
    "bai": "bidisearch.bench.adapters.run_bai",
    "bai_trans": "bidisearch.bench.adapters.run_bai_trans",
    "baa": "bidisearch.bench.adapters.run_baa",
    "add_baa": "bidisearch.bench.adapters.run_add_baa",
    "add_bda": "bidisearch.bench.adapters.run_add_bda",
    "max_bai": "bidisearch.bench.adapters.run_max_bai",
    "max_bai_trans": "bidisearch.bench.adapters.run_max_bai_trans",
    "max_ida": "bidisearch.bench.adapters.run_max_ida",
}

# Instance families: name -> builder(config) -> list of Domain
domains = {
    "puzzle": "bidisearch.bench.instances.build_puzzle_instances",
    "maze": "bidisearch.bench.instances.build_maze_instances",
    "symmetric": "bidisearch.bench.instances.build_symmetric_instances",
}

# Instance files: format -> loader(path) -> list of Domain
instance_formats = {
    "korf15": "bidisearch.bench.instances.load_korf_file",
    "maze": "bidisearch.bench.instances.load_maze_file",
}

# Report writers: format -> emit(rows, summary) -> str
report_formats = {
    "csv": "bidisearch.bench.report.emit_csv",
    "json": "bidisearch.bench.report.emit_json",
}
