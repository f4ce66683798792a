"""Top-level package for quadlcm.

Exact arithmetic in Z[√-c], the Bézout cofactor of the shifted products
P_k and conj(P_k), and certified lower bounds for
L_{c,m,n} = lcm{m²+c, ..., n²+c}.
"""

__author__ = """Patrick Boettcher"""
__email__ = 'p@yai.se'
__version__ = '0.1.0'
