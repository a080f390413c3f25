from .turn import Turn, BASEPOINT, circular_distance
from .torus_skeleton import SkeletonPoint, MembershipResult, membership, sample, sample_partner, random_turn
