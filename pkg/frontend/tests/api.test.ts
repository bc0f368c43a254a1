import { describe, expect, it } from "vitest";

import { ServiceClient, ServiceError } from "../src/api.js";

interface Call {
  url: string;
  method: string;
  body: unknown;
}

function stubbedClient(status: number, payload: unknown) {
  const calls: Call[] = [];
  const fetchImpl = async (url: string, init?: RequestInit) => {
    calls.push({
      url,
      method: init?.method ?? "GET",
      body: init?.body ? JSON.parse(init.body as string) : null,
    });
    return {
      ok: status >= 200 && status < 300,
      status,
      json: async () => payload,
    } as Response;
  };
  return { client: new ServiceClient(fetchImpl), calls };
}

const view = {
  id: "b1",
  width: 1,
  height: 1,
  rows: ["a"],
  remaining: 1,
  groups: [],
  legal_moves: [],
  history_depth: 1,
  solved: false,
};

describe("ServiceClient", () => {
  it("posts board text to /boards", async () => {
    const { client, calls } = stubbedClient(200, view);
    const got = await client.createBoard("ab\nba");
    expect(got).toEqual(view);
    expect(calls).toEqual([
      { url: "/boards", method: "POST", body: { text: "ab\nba" } },
    ]);
  });

  it("sends click coordinates as a cell pair", async () => {
    const { client, calls } = stubbedClient(200, view);
    await client.clickCell("b1", [2, 0]);
    expect(calls[0].url).toBe("/boards/b1/click");
    expect(calls[0].body).toEqual({ cell: [2, 0] });
  });

  it("omits the hint budget unless one is given", async () => {
    const { client, calls } = stubbedClient(200, { move: null, projected: 0, exact: true });
    await client.hint("b1");
    await client.hint("b1", 250);
    expect(calls[0].body).toEqual({});
    expect(calls[1].body).toEqual({ budget_ms: 250 });
  });

  it("raises ServiceError with the detail text from the body", async () => {
    const { client } = stubbedClient(409, { detail: "cell is not clickable" });
    const err = await client.clickCell("b1", [0, 0]).catch((e: unknown) => e);
    expect(err).toBeInstanceOf(ServiceError);
    expect((err as ServiceError).status).toBe(409);
    expect((err as ServiceError).message).toBe("cell is not clickable");
  });

  it("falls back to a generic message when the body has no detail", async () => {
    const { client } = stubbedClient(500, "not json at all");
    const err = await client.undo("b1").catch((e: unknown) => e);
    expect(err).toBeInstanceOf(ServiceError);
    expect((err as ServiceError).message).toContain("500");
  });

  it("routes the generators and solvability reads", async () => {
    const { client, calls } = stubbedClient(200, view);
    await client.generatePartition({ target: 6, elements: [2, 2, 2, 2, 2, 2] });
    await client.generateSat({ num_vars: 1, clauses: [[1]] });
    await client.solvability("b1");
    expect(calls.map((c) => c.url)).toEqual([
      "/generate/3partition",
      "/generate/3sat",
      "/boards/b1/solvability",
    ]);
    expect(calls[2].method).toBe("GET");
  });
});
