// Typed client for the play server's JSON API. The server is the single
// source of truth: nothing here computes game logic.
export class ApiError extends Error {
    constructor(status, detail, 
    /** violated rule name for 422 illegal-move errors */
    rule) {
        super(typeof detail === "string" ? detail : `request failed (${status})`);
        this.status = status;
        this.detail = detail;
        this.rule = rule;
        this.name = "ApiError";
    }
}
export class ApiClient {
    constructor(baseUrl = "", 
    // wrap the global so the browser sees the right `this`
    fetchFn = (input, init) => fetch(input, init)) {
        this.baseUrl = baseUrl;
        this.fetchFn = fetchFn;
    }
    async createSession(heaps, humanFirst) {
        return this.request("POST", "/api/sessions", {
            heaps,
            human_first: humanFirst,
        });
    }
    async postMove(sessionId, move) {
        return this.request("POST", `/api/sessions/${sessionId}/moves`, move);
    }
    async getSession(sessionId) {
        return this.request("GET", `/api/sessions/${sessionId}`);
    }
    async classify(heaps) {
        return this.request("GET", `/api/classify?heaps=${heaps.join(",")}`);
    }
    async complete(heaps) {
        const body = await this.request("GET", `/api/complete?heaps=${heaps.join(",")}`);
        return body.z;
    }
    async request(method, path, body) {
        const init = { method };
        if (body !== undefined) {
            init.headers = { "content-type": "application/json" };
            init.body = JSON.stringify(body);
        }
        const resp = await this.fetchFn(this.baseUrl + path, init);
        const payload = await resp.json().catch(() => null);
        if (!resp.ok) {
            const detail = payload && typeof payload === "object" && "detail" in payload
                ? payload.detail
                : payload;
            const rule = detail && typeof detail === "object" && "rule" in detail
                ? String(detail.rule)
                : null;
            throw new ApiError(resp.status, detail, rule);
        }
        return payload;
    }
}
//# sourceMappingURL=api.js.map