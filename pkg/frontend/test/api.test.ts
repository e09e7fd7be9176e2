import { describe, expect, it } from "vitest";

import { ApiClient, ApiError } from "../src/api.js";

interface Call {
  input: string;
  init?: RequestInit;
}

function stubClient(status: number, body: unknown) {
  const calls: Call[] = [];
  const client = new ApiClient("", async (input, init) => {
    calls.push({ input, init });
    return new Response(JSON.stringify(body), {
      status,
      headers: { "content-type": "application/json" },
    });
  });
  return { client, calls };
}

describe("ApiClient", () => {
  it("posts new sessions with the configured first mover", async () => {
    const view = { id: "s1", state: [0, 1, 3, 5], status: "ongoing" };
    const { client, calls } = stubClient(201, view);

    const session = await client.createSession([0, 1, 4, 5], false);

    expect(session.id).toBe("s1");
    expect(calls[0]?.input).toBe("/api/sessions");
    expect(calls[0]?.init?.method).toBe("POST");
    expect(JSON.parse(String(calls[0]?.init?.body))).toEqual({
      heaps: [0, 1, 4, 5],
      human_first: false,
    });
  });

  it("builds classify queries as comma lists", async () => {
    const { client, calls } = stubClient(200, {
      classification: "N",
      best_move: { heap_index: 2, new_size: 3 },
    });

    const result = await client.classify([0, 1, 4, 5]);

    expect(calls[0]?.input).toBe("/api/classify?heaps=0,1,4,5");
    expect(result.best_move).toEqual({ heap_index: 2, new_size: 3 });
  });

  it("unwraps completion values", async () => {
    const { client } = stubClient(200, { z: 7 });
    expect(await client.complete([1, 4, 5])).toBe(7);
  });

  it("surfaces the violated rule on 422", async () => {
    const { client } = stubClient(422, {
      detail: { error: "illegal move", rule: "positive-duplicate" },
    });

    const err = await client
      .postMove("s1", { heap_index: 0, new_size: 5 })
      .then(() => null, (e) => e);

    expect(err).toBeInstanceOf(ApiError);
    expect((err as ApiError).status).toBe(422);
    expect((err as ApiError).rule).toBe("positive-duplicate");
  });

  it("surfaces plain-string details on 400", async () => {
    const { client } = stubClient(400, { detail: "duplicate positive heap: 1" });

    const err = await client.createSession([1, 1], true).then(() => null, (e) => e);

    expect((err as ApiError).detail).toBe("duplicate positive heap: 1");
    expect((err as ApiError).rule).toBeNull();
  });
});
