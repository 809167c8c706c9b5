/**
 * Word-tree view model.
 *
 * The server owns all counts; this model only tracks which branches are
 * open.  Branches deeper than the default depth start collapsed; clicking
 * a node fetches a deeper subtree through the API and splices it in.
 * Collapsing is purely client-side and never discards loaded data, so
 * expand followed by collapse renders exactly the pre-expansion view.
 */

import type { TreeNode } from "../types.js";

export const DEFAULT_VISIBLE_DEPTH = 2;

export interface TreeViewNode {
  token: string;
  count: number;
  expanded: boolean;
  children: TreeViewNode[];
}

function toViewNode(node: TreeNode, depth: number, visibleDepth: number): TreeViewNode {
  return {
    token: node.token,
    count: node.count,
    expanded: depth < visibleDepth,
    children: node.children.map((c) => toViewNode(c, depth + 1, visibleDepth)),
  };
}

export function buildTreeView(
  root: TreeNode,
  visibleDepth: number = DEFAULT_VISIBLE_DEPTH,
): TreeViewNode {
  return toViewNode(root, 0, visibleDepth);
}

function locate(root: TreeViewNode, path: string[]): TreeViewNode | null {
  let node: TreeViewNode = root;
  for (const token of path) {
    const next = node.children.find((c) => c.token === token);
    if (!next) return null;
    node = next;
  }
  return node;
}

/** Open a branch, splicing in a server-provided deeper subtree if given. */
export function expandNode(
  root: TreeViewNode,
  path: string[],
  subtree?: TreeNode,
): TreeViewNode {
  const copy = structuredClone(root);
  const node = locate(copy, path);
  if (!node) throw new Error(`path not in tree: ${path.join(" / ")}`);
  if (subtree) {
    if (subtree.count !== node.count) {
      throw new Error(
        `server subtree count ${subtree.count} != node count ${node.count}`,
      );
    }
    node.children = subtree.children.map((c) => ({
      token: c.token,
      count: c.count,
      expanded: false,
      children: c.children.map((g) => ({
        token: g.token,
        count: g.count,
        expanded: false,
        children: [],
      })),
    }));
  }
  node.expanded = true;
  return copy;
}

/** Close a branch; loaded children stay in memory but are not rendered. */
export function collapseNode(root: TreeViewNode, path: string[]): TreeViewNode {
  const copy = structuredClone(root);
  const node = locate(copy, path);
  if (!node) throw new Error(`path not in tree: ${path.join(" / ")}`);
  node.expanded = false;
  return copy;
}

/** The rendered (visible) structure: what the user actually sees. */
export interface VisibleNode {
  token: string;
  count: number;
  children: VisibleNode[];
}

export function visibleTree(node: TreeViewNode): VisibleNode {
  return {
    token: node.token,
    count: node.count,
    children: node.expanded ? node.children.map(visibleTree) : [],
  };
}

export function renderTreeHtml(root: TreeViewNode): string {
  const render = (node: VisibleNode): string => {
    const children = node.children.length
      ? `<ul>${node.children.map(render).join("")}</ul>`
      : "";
    return (
      `<li class="tree-node"><span class="token">${escapeHtml(node.token)}</span>` +
      ` <span class="count" data-value="${node.count}">${node.count}</span>${children}</li>`
    );
  };
  return `<ul class="word-tree">${render(visibleTree(root))}</ul>`;
}

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}
