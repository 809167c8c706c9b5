import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";

const here = dirname(fileURLToPath(import.meta.url));

export function loadFixture<T>(name: string): T {
  return JSON.parse(readFileSync(join(here, "fixtures", name), "utf-8")) as T;
}

/** Every number appearing anywhere in a JSON document. */
export function collectNumbers(value: unknown, into = new Set<number>()): Set<number> {
  if (typeof value === "number") {
    into.add(value);
  } else if (Array.isArray(value)) {
    for (const item of value) collectNumbers(item, into);
  } else if (value && typeof value === "object") {
    for (const item of Object.values(value)) collectNumbers(item, into);
  }
  return into;
}

/** data-value attributes carry the exact API numbers behind rendered text. */
export function dataValues(markup: string): number[] {
  return [...markup.matchAll(/data-value="([^"]+)"/g)].map((m) => Number(m[1]));
}

/** Numbers a user can actually read: numeric tokens in text content. */
export function visibleNumbers(markup: string): string[] {
  const text = markup.replace(/<[^>]*>/g, " ");
  return [...text.matchAll(/-?\d+(?:\.\d+)?/g)].map((m) => m[0]);
}
