import { describe, expect, it } from "vitest";

import type { TreeNode } from "../src/types.js";
import {
  buildTreeView,
  collapseNode,
  expandNode,
  renderTreeHtml,
  visibleTree,
} from "../src/views/wordtree.js";
import { loadFixture } from "./helpers.js";

const tree = loadFixture<TreeNode>("tree.json");
const expandFixture = loadFixture<TreeNode>("tree_expand.json");

describe("word tree view", () => {
  it("collapses branches beyond depth 2 by default", () => {
    const view = buildTreeView(tree);
    const html = renderTreeHtml(view);
    expect(html).toContain("phong phú");   // depth 1: visible
    expect(html).toContain("nhưng");       // depth 2: visible, but closed
    expect(html).not.toContain("bài tập"); // depth 3: hidden until expanded
  });

  it("expand then collapse restores the pre-expansion view exactly", () => {
    const view = buildTreeView(tree);
    const before = renderTreeHtml(view);
    const expanded = expandNode(view, ["phong phú", "nhưng"]);
    expect(renderTreeHtml(expanded)).toContain("bài tập");
    const collapsed = collapseNode(expanded, ["phong phú", "nhưng"]);
    expect(renderTreeHtml(collapsed)).toBe(before);
    expect(visibleTree(collapsed)).toEqual(visibleTree(view));
  });

  it("expand via an API subtree then collapse is also idempotent", () => {
    const view = buildTreeView(tree, 1);   // "phong phú" starts closed
    const before = renderTreeHtml(view);
    const expanded = expandNode(view, ["phong phú"], expandFixture);
    expect(renderTreeHtml(expanded)).toContain("nhưng");
    const collapsed = collapseNode(expanded, ["phong phú"]);
    expect(renderTreeHtml(collapsed)).toBe(before);
  });

  it("expansion never touches other branches", () => {
    const view = buildTreeView(tree, 1);
    const expanded = expandNode(view, ["phong phú"], expandFixture);
    const untouched = expanded.children.find((c) => c.token === "thoải mái");
    const original = view.children.find((c) => c.token === "thoải mái");
    expect(untouched).toEqual(original);
  });

  it("rejects a server subtree whose count disagrees with the node", () => {
    const view = buildTreeView(tree, 1);
    const bogus = { ...expandFixture, count: expandFixture.count + 1 };
    expect(() => expandNode(view, ["phong phú"], bogus)).toThrow(/count/);
  });

  it("branch labels show token and count from the fixture only", () => {
    const html = renderTreeHtml(buildTreeView(tree));
    expect(html).toContain(`<span class="token">học tập</span>`);
    expect(html).toContain(`data-value="${tree.count}"`);
  });
});
