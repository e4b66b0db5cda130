"""
Celery tasks for batch certification.
"""
from celery import shared_task

from apps.corpus.services.textformat import parse_graph
from apps.rigidity.exceptions import InternalDisagreementError
from apps.rigidity.services.certification import certify
from apps.rigidity.services.framework import is_generically_minimally_rigid
from apps.sparsity.services.counts import Family, is_member, is_ross_circuit
from config.runconfig import RunConfig


@shared_task
def certify_graph(graph_text, seed=None):
    """
    Certify one graph given in the text format; returns the JSON report.

    A disagreement is returned as a report with agreement = False instead of
    failing the task.
    """
    g = parse_graph(graph_text)
    config = RunConfig.from_settings(seed=seed)
    try:
        return certify(g, config).as_dict()
    except InternalDisagreementError as exc:
        return exc.report.as_dict()


@shared_task
def sweep_graph(graph_text, seed=None, exhaustive=True):
    """
    Family memberships and the generic minimal rigidity verdict of one graph.

    exhaustive selects the literal all-subsets count check.
    """
    g = parse_graph(graph_text)
    config = RunConfig.from_settings(seed=seed)
    memberships = {family.value: is_member(g, family, exhaustive=exhaustive) for family in Family}
    memberships['ross-circuit'] = is_ross_circuit(g)
    rigid = is_generically_minimally_rigid(g, config)
    return {
        'n': g.n,
        'edges': g.triples(),
        'memberships': memberships,
        'generically_minimally_rigid': rigid,
        'agreement': memberships[Family.REFLECTION_LAMAN.value] == rigid,
    }
