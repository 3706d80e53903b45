"""Privacy-preserving decision tree (PPDT) inference over level-site chains.

A pre-trained decision tree is partitioned by depth across independent
level-site services. Each level-site holds encrypted thresholds for one
level only; a query walks the chain one encrypted comparison per level and
the client receives an encrypted class label as soon as a leaf is reached.
"""

__version__ = "0.1.0"
