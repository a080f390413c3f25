from .simulation import Simulation, SimulationReport, check_query, draw_query
from .continuity import perturb_query, continuity_ratio, path_distance, query_distance
from .visualization import plot_path, plot_domain_histogram
