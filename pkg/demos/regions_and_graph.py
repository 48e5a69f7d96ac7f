"""Regions of linearity of the rank-4 transition map and the two isomorphic graphs.

Run: python3 demos/regions_and_graph.py
"""

from collections import Counter

from canonparam.plmap import enumerate_leaves, enumerate_regions, region_adjacency_graph, region_by_number
from canonparam.rectangles import correspondence
from canonparam.words import class_graph, format_word


def main():
    regions = enumerate_regions()
    print(len(enumerate_leaves()), "sign leaves,", len(regions), "regions")
    census = Counter(len(r.inequalities) for r in regions)
    for k in sorted(census):
        print(f"  {census[k]:3d} regions with {k} inequalities")
    left, right = region_by_number(1).named()
    print("region 1:", ", ".join(left), "<= 0 <=", ", ".join(right))

    corr = correspondence()
    cg = class_graph(4)
    rg = region_adjacency_graph()
    mapped = {tuple(sorted((corr[u], corr[v]))) for u, v in cg.edges}
    print(len(cg.edges), "class edges,", len(rg.edges), "region edges, identical:", mapped == set(rg.edges))
    for rep, num in sorted(corr.items(), key=lambda kv: kv[1])[:5]:
        print(f"  class {format_word(rep)} -> region {num}")


if __name__ == "__main__":
    main()
