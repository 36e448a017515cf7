# Game core - profiles, costs, best responses, equilibria and dynamics
