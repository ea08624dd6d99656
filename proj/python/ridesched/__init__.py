from ._core import (
    CorpusRecord,
    Instance,
    bench_csv,
    generate,
    load_instance,
    parse_instance,
    read_corpus,
    schedule,
    write_corpus,
)

__all__ = [
    "CorpusRecord",
    "Instance",
    "bench_csv",
    "generate",
    "load_instance",
    "parse_instance",
    "read_corpus",
    "schedule",
    "write_corpus",
]
