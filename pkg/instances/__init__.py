# Instances - equilibrium constructions, reductions, gadgets and instance files
