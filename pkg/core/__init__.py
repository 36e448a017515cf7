# Graph core - distances, metrics and exact cover solvers
