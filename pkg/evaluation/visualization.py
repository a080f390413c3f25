import matplotlib

matplotlib.use("Agg")  # nessuna finestra: le figure vengono solo salvate su file

import matplotlib.pyplot as plt
import numpy as np

from evaluation.simulation import SimulationReport
from planner.motion_planner import PlannerPath


#Modulo di Visualizzazione (coordinate del percorso & istogramma dei domini)
def plot_path(path: PlannerPath, steps: int, output_path: str):

    #Disegna le coordinate del percorso in funzione del tempo, una curva per coordinata.
    #I punti esatti sono marcati, quelli solo numerici sono collegati da una linea.

    #:param path: percorso pianificato.
    #:param steps: numero di intervalli della griglia dei tempi.
    #:param output_path: file PNG di destinazione.

    times = path.sample_times(steps)
    samples = [path.evaluate(t) for t in times]
    t_values = np.array([float(t) for t in times])

    plt.figure()
    for j in range(len(path.rules)):
        values = np.array([p.coords[j].approx for p in samples])
        exact = np.array([p.coords[j].is_exact for p in samples])
        line, = plt.plot(t_values, values, label=f"u{j + 1}")
        plt.scatter(t_values[exact], values[exact], s=8, color=line.get_color())

    if path.circle_rule is not None:
        circle = np.array([p.circle.approx for p in samples])
        plt.plot(t_values, circle, linestyle="--", color="black", label="S¹")

    for boundary in path.phase_boundaries():
        plt.axvline(float(boundary), color="grey", linewidth=0.5)

    plt.xlabel("t")
    plt.ylabel("giri")
    plt.ylim(0, 1)
    plt.title(f"Percorso pianificato, dominio {path.domain} ({path.mode})")
    plt.legend()
    plt.savefig(output_path)  #Salva l'immagine

    plt.close()  #Chiude la figura per evitare sovrapposizioni


def plot_domain_histogram(report: SimulationReport, output_path: str):

    #Istogramma dell'uso dei domini locali nella simulazione.

    indices = np.array(sorted(report.histogram))
    counts = np.array([report.histogram[i] for i in indices])

    plt.figure()
    plt.bar(indices, counts)
    plt.xticks(indices)
    plt.xlabel("indice del dominio")
    plt.ylabel("query")
    plt.title(f"Uso dei domini n={report.n}, r={report.r} ({report.mode})")
    plt.savefig(output_path)

    plt.close()
