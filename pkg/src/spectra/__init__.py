# src/spectra/__init__.py
"""
spectra: autovalores de Dirichlet, capacidade harmônica e déficit de Hessiana
para anéis planos e cilindros com perturbação conforme, com verificação
numérica das identidades variacionais ao longo do CSF.
"""

__version__ = "0.1.0"
