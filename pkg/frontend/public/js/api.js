// Typed client for the game service. The client never decides legality
// itself; everything playable comes back from these endpoints.
export class ApiError extends Error {
    constructor(status, detail) {
        super(detail);
        this.status = status;
    }
}
async function request(base, path, init) {
    const res = await fetch(base + path, init);
    const body = await res.json().catch(() => ({}));
    if (!res.ok) {
        const detail = typeof body.detail === "string" ? body.detail : res.statusText;
        throw new ApiError(res.status, detail);
    }
    return body;
}
function post(payload) {
    return {
        method: "POST",
        headers: { "Content-Type": "application/json" },
        body: JSON.stringify(payload),
    };
}
export class GameApi {
    constructor(base = "") {
        this.base = base;
    }
    createFromInstance(instance, engine) {
        return request(this.base, "/api/games", post({ instance, engine }));
    }
    createFromFamily(family, engine) {
        return request(this.base, "/api/games", post({ family, engine }));
    }
    getGame(id) {
        return request(this.base, `/api/games/${id}`);
    }
    submitMove(id, move) {
        return request(this.base, `/api/games/${id}/moves`, post(move));
    }
    engineMove(id) {
        return request(this.base, `/api/games/${id}/engine-move`, { method: "POST" });
    }
    analysis(id) {
        return request(this.base, `/api/games/${id}/analysis`);
    }
}
//# sourceMappingURL=api.js.map