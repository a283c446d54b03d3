"""driversmith: knowledge-graph guided fuzz driver generation for C libraries.

Pipeline stages: parse a C repository into a source model, build a code
knowledge graph with LLM summaries, index it for retrieval, query API
combinations, generate and repair fuzz drivers, run a coverage-guided
fuzzing loop with combination mutation, and triage the resulting crashes.
Every external effect (LLM, embedder, compiler, fuzzer) sits behind a
swappable provider so the whole pipeline runs deterministically offline.
"""

__version__ = "0.1.0"
