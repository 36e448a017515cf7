# Analysis - optimum estimates, equilibrium bound checks and reports
