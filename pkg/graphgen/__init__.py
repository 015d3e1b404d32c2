"""
graphgen

Exact random graph sampling:
- Erdos-Renyi by coin flipping, ball dropping and grass-hopping
- Chung-Lu and stochastic block models as unions of Erdos-Renyi blocks
- Stochastic Kronecker graphs via region enumeration, multiset unranking
  and Morton decoding
"""

__version__ = "0.1.0"
__author__ = "graphgen developers"
