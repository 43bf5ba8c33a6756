# pk: path graphs and co-P_3 graph pairs
__version__ = "0.1.0"
