import { mountApp } from './app.js';

const params = new URLSearchParams(window.location.search);
const baseUrl = params.get('api') ?? 'http://localhost:8080';
mountApp(document.getElementById('app')!, baseUrl);
