# Hypergraph transversal algorithms, one module per pipeline
